def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()
total = 0
total += 0 * 0
total += 1 * 1
total += 2 * 2
total += 3 * 3
print(total)
