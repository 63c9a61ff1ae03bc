public class A {
    private int base = 3;

    private int derived = seed() + base;

    public int get() {
        return derived;
    }

    private int seed() {
        return 1;
    }
}
