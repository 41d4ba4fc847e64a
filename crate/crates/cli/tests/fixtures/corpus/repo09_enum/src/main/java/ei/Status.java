package ei;

public enum Status {
    ACTIVE,
    DONE;

    public boolean isTerminal() {
        return this == DONE;
    }

    public String label() {
        return name().toLowerCase();
    }
}
