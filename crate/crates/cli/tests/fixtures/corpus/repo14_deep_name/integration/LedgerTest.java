public class LedgerTest {
    @Test
    public void testRecord() {
        Ledger ledger = new Ledger();
        ledger.record("x");
    }

    @Test
    public void testBalance() {
        Ledger ledger = new Ledger();
        assertEquals(0, ledger.balance());
    }

    @Test
    public void checksTotal() {
        Ledger ledger = new Ledger();
        assertEquals(0, ledger.balance());
    }
}
