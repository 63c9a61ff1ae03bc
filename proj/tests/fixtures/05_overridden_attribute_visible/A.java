public class A {
    public String label = "a";
}
