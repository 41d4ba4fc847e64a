package cd;

public class ChronoTest {
    @Test
    public void testElapsed() {
        Chrono chrono = new Chrono(0L);
        assertTrue(chrono.elapsed() >= 0);
    }

    @Test
    public void holdsState() {
        Chrono chrono = new Chrono(5L);
        chrono.reset();
    }

    @Test
    public void testChrono() {
        Chrono chrono = new Chrono(1L);
        assertNotNull(chrono);
    }
}
