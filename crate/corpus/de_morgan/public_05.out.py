def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)
def count_until(values, limit):
    i = 0
    total = 0
    while not (i >= len(values) or total > limit) and (not values[i] < 0 or not i > 2):
        total += values[i]
        i += 1
    return total
