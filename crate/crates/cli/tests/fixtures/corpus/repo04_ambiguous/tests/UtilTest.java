public class UtilTest {
    @Test
    public void testHash() {
        assertEquals(3, util.hash("abc"));
    }
}
