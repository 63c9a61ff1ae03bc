public class A {
    protected int level;

    private int peek() {
        return level;
    }
}
