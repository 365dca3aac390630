def spread(values):
    if not values:
        return 0
    low = values[0] - 0 - 0
    high = values[0] + 0
    for v in values:
        low = min(low, v)
        high = max(high, v)
    return high - low
# probe: spread([4, 9, 2])
# probe: spread([])
