def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

threshold = 10
def big(values):
    limit = 100
    return [v for v in values if v > threshold]
print(big([5, 15, 25]))
