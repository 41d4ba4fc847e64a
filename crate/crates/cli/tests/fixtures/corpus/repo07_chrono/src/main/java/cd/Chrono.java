package cd;

public class Chrono {
    public Chrono(long start) {
        this.start = start;
    }

    public long elapsed() {
        return now() - start;
    }

    public void reset() {
        start = now();
    }
}
