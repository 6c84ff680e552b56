/**
 * A bank account with a non-negative balance.
 *
 * <p>All amounts are whole cents. Withdrawals that would overdraw
 * the account are refused and reported to the caller.
 */
public class BankAccount {

    private long balance;
    private final String owner;

    /**
     * Opens an account.
     *
     * @param owner  display name of the account holder
     * @param openingBalance  initial balance in cents, not negative
     * @throws IllegalArgumentException if the opening balance is negative
     */
    public BankAccount(String owner, long openingBalance) {
        if (openingBalance < 0) {
            throw new IllegalArgumentException("negative opening balance");
        }
        this.owner = owner;
        this.balance = openingBalance;
    }

    /**
     * Adds money to the account.
     *
     * @param amount cents to add, must be positive
     * @return the new balance
     */
    public long deposit(long amount) {
        if (amount <= 0) {
            throw new IllegalArgumentException("deposit must be positive");
        }
        balance = balance + amount;
        return balance;
    }

    /**
     * Takes money out if the balance allows it.
     *
     * @param amount cents to remove, must be positive
     * @return true when the withdrawal happened, false when refused
     */
    public boolean withdraw(long amount) {
        if (amount <= 0 || amount > balance) {
            return false;
        }
        balance = balance - amount;
        return true;
    }

    /** Current balance in cents. */
    public long getBalance() {
        return balance;
    }

    /** Name of the account holder. */
    public String getOwner() {
        return owner;
    }
}
