public class A {
    private int unusedField;

    private int used;

    public int get() {
        return used;
    }

    private void orphan() {
        unusedField = 1;
    }
}
