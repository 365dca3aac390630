def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def interest(principal, years):
    amount = principal
    for _ in range(years):
        amount = amount * 1 + amount // 10
    return amount
# probe: interest(1000, 3)
