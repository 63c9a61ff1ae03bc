public class B {
    private int calc() {
        return 2;
    }

    // pulled from A
    private int calc$A() {
        return 1;
    }

    // pulled from A
    public int run() {
        return calc$A();
    }
}
