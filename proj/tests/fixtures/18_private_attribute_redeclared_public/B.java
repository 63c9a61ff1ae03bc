public class B extends A {
    public String tag;
}
