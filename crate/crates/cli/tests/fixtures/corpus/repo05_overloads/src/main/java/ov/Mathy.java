package ov;

public class Mathy {
    public int sum(int a, int b) {
        return a + b;
    }

    public int sum(int a, int b, int c) {
        return a + b + c;
    }

    public int mul(int a, int b) {
        return a * b;
    }
}
