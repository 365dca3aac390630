def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def pad(values, enabled):
    if enabled:
        for k in range(2):
            values.append(0)
    return values
# probe: pad([1], True)
# probe: pad([1], False)
