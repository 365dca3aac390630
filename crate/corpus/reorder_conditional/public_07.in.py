def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def update(balance, amount):
    if not amount > 0:
        print('ignored', amount)
        return balance
    else:
        balance = balance + amount
        print('deposited', amount)
        return balance
# probe: update(10, 5)
# probe: update(10, -5)
