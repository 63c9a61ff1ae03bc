public class A {
    protected int x;

    public int get() {
        return x;
    }
}
