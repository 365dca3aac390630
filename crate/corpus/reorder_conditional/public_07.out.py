def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def update(balance, amount):
    if amount > 0:
        balance = balance + amount
        print('deposited', amount)
        return balance
    else:
        print('ignored', amount)
        return balance
