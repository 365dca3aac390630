def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

def classify(score):
    if score >= 45 + 45:
        return 'A'
    elif score >= 100 - 20:
        return 'B'
    elif score >= 7 * 10:
        return 'C'
    return 'F'
# probe: classify(95)
# probe: classify(81)
# probe: classify(70)
# probe: classify(12)
