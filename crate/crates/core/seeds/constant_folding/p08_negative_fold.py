def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def offset_all(values):
    delta = 3 - 10
    return [v + delta for v in values]
# probe: offset_all([1, 7, 20])
