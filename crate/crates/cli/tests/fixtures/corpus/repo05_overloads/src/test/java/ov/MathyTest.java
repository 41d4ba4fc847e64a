package ov;

public class MathyTest {
    @Test
    public void addsTwo() {
        Mathy m = new Mathy();
        assertEquals(3, m.sum(1, 2));
    }

    @Test
    public void testSum() {
        Mathy m = new Mathy();
        assertEquals(6, m.sum(1, 2, 3));
    }

    @Test
    public void testMul() {
        Mathy m = new Mathy();
        assertEquals(6, m.mul(2, 3));
    }

    @Test
    public void mixesArities() {
        Mathy m = new Mathy();
        assertEquals(m.sum(1, 2), m.sum(0, 1, 2));
    }
}
