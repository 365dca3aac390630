def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def in_band(x):
    if 0 < x < 10:
        return 'in'
    else:
        return 'out'
