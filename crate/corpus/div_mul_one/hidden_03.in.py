def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def flat_index(row, col, width):
    return row * width * 1 + col * 1
# probe: flat_index(2, 3, 10)
