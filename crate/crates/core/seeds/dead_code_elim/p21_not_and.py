def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def enabled(x):
    if not (True and 1):
        return False
    return x > 0
# probe: enabled(2)
# probe: enabled(-2)
