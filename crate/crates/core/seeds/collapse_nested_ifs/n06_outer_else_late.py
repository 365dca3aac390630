def safe_ratio(num, den):
    if den == 0:
        return None
    ratio = num / den
    return round(ratio, 3)

def classify(n):
    label = 'small'
    if n > 100:
        if n > 1000:
            label = 'huge'
    else:
        label = 'small'
    return label
# probe: classify(5000)
# probe: classify(500)
# probe: classify(5)
