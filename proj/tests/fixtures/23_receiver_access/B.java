public class B extends A {
    public int v;
}
