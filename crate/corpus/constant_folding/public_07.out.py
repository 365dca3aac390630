def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def offset_all(values):
    delta = -7
    return [v + delta for v in values]
