def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def check(values):
    for v in values:
        if v < 0:
            pass
    return len(values)
