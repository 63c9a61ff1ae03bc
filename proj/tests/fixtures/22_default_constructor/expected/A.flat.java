public class A {
    protected int n;

    public A() {
        n = 4;
    }

    public int get() {
        return n;
    }
}
