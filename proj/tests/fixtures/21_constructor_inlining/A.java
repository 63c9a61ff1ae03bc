package shapes;

public class A {
    private int w;

    private int h;

    public A(int w, int h) {
        this.w = w;
        this.h = h;
    }

    public int area() {
        return w * h;
    }
}
