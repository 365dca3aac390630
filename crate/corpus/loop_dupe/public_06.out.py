def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def maybe_double(values, enabled):
    if enabled:
        for k in range(len(values)):
            values[k] = values[k] * 2
        for k in range(len(values)):
            values[k] = values[k] * 2
    return values
