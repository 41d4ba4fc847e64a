package org.alpha;

public class ParserTest {
    @Test
    public void testParse() {
        Parser parser = new Parser();
        assertNotNull(parser.parse("a b"));
    }

    @Test
    public void splitsInput() {
        Parser parser = new Parser();
        assertEquals(2, parser.tokenize("a b").length);
    }
}
