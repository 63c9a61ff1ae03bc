public class B {
    public int count;

    public int sum(int count) {
        return count$A + count;
    }

    public int add(int total) {
        return this.total + total;
    }

    // pulled from A
    protected int count$A;

    // pulled from A
    protected int total;
}
