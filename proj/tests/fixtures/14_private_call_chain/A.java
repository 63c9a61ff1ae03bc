public class A {
    private int depth;

    public int walk() {
        return step1();
    }

    private int step1() {
        return step2() + 1;
    }

    private int step2() {
        return depth;
    }

    private int unusedStep() {
        return 0;
    }
}
