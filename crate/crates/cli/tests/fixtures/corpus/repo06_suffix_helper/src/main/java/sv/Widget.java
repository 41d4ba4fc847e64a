package sv;

public class Widget {
    public String render() {
        return "<widget/>";
    }

    public void resize(int scale) {
        this.scale = scale;
    }
}
