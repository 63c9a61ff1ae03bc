public class A {
    private String tag;

    public void clear() {
        System.out.println("clear");
    }
}
