public class Calculator {
    private int memory;

    public Calculator(int initial) {
        this.memory = initial;
    }

    public int add(int value) {
        memory += value;
        return memory;
    }

    public int divide(int value) {
        return memory / value;
    }
}
