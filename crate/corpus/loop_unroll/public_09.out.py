def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def pad(values, enabled):
    if enabled:
        values.append(0)
        values.append(0)
    return values
