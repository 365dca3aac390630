def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def mixed_parity(x, y):
    return not (x % 2 == 0 and y % 2 == 0) and not (x % 2 == 1 and y % 2 == 1)
# probe: mixed_parity(2, 3)
# probe: mixed_parity(2, 4)
# probe: mixed_parity(3, 5)
