public class B extends A {
    protected int level;
}
