public class B {
    public String label = "b";

    // pulled from A
    public String label$A = "a";
}
