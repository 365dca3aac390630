def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def report(items):
    for name, qty in items:
        if not qty > 0 or not qty < 100:
            print('odd quantity', name, qty)
    return len(items)
