public class StackTest {
    @Test
    public void testPush() {
        Stack stack = new Stack();
        stack.push("a");
    }

    @Test
    public void testPop() {
        Stack stack = new Stack();
        stack.push("a");
        assertEquals("a", stack.pop());
    }

    @Test
    public void testPeek() {
        Stack stack = new Stack();
        stack.push("b");
        assertEquals("b", stack.peek());
    }

    @Test
    public void reportsSize() {
        Stack stack = new Stack();
        assertEquals(0, stack.size());
    }
}
