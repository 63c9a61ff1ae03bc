package p2;

public class B {
    // pulled from A
    int hidden;
}
