def spread(values):
    if not values:
        return 0
    low = values[0]
    high = values[0]
    for v in values:
        low = min(low, v)
        high = max(high, v)
    return high - low
