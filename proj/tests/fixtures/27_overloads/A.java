public class A {
    public int f(int a) {
        return a;
    }

    public int f(String s) {
        return 0;
    }

    public int g() {
        return f(1) + f("x");
    }
}
