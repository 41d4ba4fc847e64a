package dp;

public class Ledger {
    public void record(String entry) {
        entries.add(entry);
    }

    public int balance() {
        return entries.size();
    }
}
