def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def in_band(x):
    if not 0 < x < 10:
        return 'out'
    else:
        return 'in'
# probe: in_band(5)
# probe: in_band(10)
