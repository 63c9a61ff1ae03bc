package p1;

public class A {
    int hidden;
}
