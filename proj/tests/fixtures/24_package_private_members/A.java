class A {
    int count;

    protected void add() {
        count = count + 1;
    }

    void reset() {
        count = 0;
    }
}
