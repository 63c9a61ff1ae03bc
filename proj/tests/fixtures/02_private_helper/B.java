public class B extends A {
    public int twice(int v) {
        return v * 2;
    }
}
