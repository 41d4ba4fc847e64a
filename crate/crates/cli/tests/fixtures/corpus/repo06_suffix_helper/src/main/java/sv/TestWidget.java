package sv;

public class TestWidget {
    public String help() {
        return "usage";
    }

    public boolean probe() {
        return true;
    }
}
