public class A {
    protected int x;

    public void show() {
        System.out.println(x);
    }
}
