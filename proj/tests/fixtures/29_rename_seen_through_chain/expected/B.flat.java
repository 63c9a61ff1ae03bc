public class B {
    public int bx() {
        return x$Z + x$Z;
    }

    // pulled from A
    private int x = 2;

    // pulled from A
    public int ax() {
        return x;
    }

    // pulled from Z
    public int x$Z = 1;
}
