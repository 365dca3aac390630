def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def count_until(values, limit):
    i = 0
    total = 0
    while not (i >= len(values) or total > limit) and not (values[i] < 0 and i > 2):
        total += values[i]
        i += 1
    return total
# probe: count_until([1, 2, 3, -1, 5], 100)
# probe: count_until([50, 60, 70], 80)
