public class B {
    public int more() {
        return n + 1;
    }

    public B() {
        n = 4;
    }

    // pulled from A
    protected int n;

    // pulled from A
    public int get() {
        return n;
    }
}
