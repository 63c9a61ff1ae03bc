public class A {
    private int count;

    public void inc() {
        bump();
    }

    private void bump() {
        count = count + 1;
    }
}
