package nst;

public class OuterTest {
    @Test
    public void testOuterOp() {
        Outer outer = new Outer();
        assertEquals(1, outer.outerOp());
    }

    public static class InnerTest {
        @Test
        public void checksInner() {
            Outer.Inner inner = new Outer.Inner();
            assertEquals(2, inner.innerOp());
        }
    }
}
