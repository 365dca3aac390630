def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def describe(n):
    parts = []
    parts.append(str(n))
    return ' '.join(parts)
