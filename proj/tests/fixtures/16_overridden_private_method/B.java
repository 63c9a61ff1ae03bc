public class B extends A {
    private int calc() {
        return 2;
    }
}
