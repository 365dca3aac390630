def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def mixed_parity(x, y):
    return (not x % 2 == 0 or not y % 2 == 0) and (not x % 2 == 1 or not y % 2 == 1)
