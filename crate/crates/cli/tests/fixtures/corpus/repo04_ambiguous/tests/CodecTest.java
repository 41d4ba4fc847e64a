public class CodecTest {
    @Test
    public void testEncode() {
        Codec codec = new Codec();
        assertEquals("AB", codec.encode("ab"));
    }

    @Test
    public void testDecode() {
        Codec codec = new Codec();
        assertEquals("ab", codec.decode("AB"));
    }
}
