package eg;

public class NumbersTest {
    @Test(timeout = 4000)
    public void testCreateFloat() {
        assertEquals(new Float(1.2f), Numbers.createFloat("1.2"));
        assertNull(Numbers.createFloat(null));
    }

    @org.junit.Test
    public void testIsDigits() {
        assertTrue(Numbers.isDigits("123"));
        assertFalse(Numbers.isDigits("1a2"));
    }

    @Test
    public void digitsOnly() {
        assertFalse(Numbers.isDigits("-123"));
        assertFalse(Numbers.isDigits("1,2,3"));
    }

    @Test
    public void testMin() {
        assertEquals(1, Numbers.min(1, 2));
    }
}
