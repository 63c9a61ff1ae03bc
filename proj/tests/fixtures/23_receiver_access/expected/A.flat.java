public class A {
    public int v;

    public int peer(A other) {
        return other.v + v;
    }
}
