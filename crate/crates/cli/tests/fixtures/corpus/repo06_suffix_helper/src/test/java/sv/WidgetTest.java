package sv;

public class WidgetTest {
    @Test
    public void testRender() {
        Widget w = new Widget();
        assertEquals("<widget/>", w.render());
    }

    @Test
    public void testResize() {
        Widget w = new Widget();
        w.resize(2);
    }
}
