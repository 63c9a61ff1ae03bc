package p2;

public class B extends A {
}
