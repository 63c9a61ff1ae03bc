public class B {
    // pulled from A
    public int x;

    // pulled from A
    public int getX() {
        return x;
    }
}
