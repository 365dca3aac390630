def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def reset_all(models):
    count = 0
    for m in models:
        m.zero_grad()
        count += 1
    return count
