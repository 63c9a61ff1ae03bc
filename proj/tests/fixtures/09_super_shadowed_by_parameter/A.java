public class A {
    protected int count;

    protected int total;
}
