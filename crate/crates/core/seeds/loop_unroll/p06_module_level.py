def normalize_name(name):
    cleaned = name.strip().lower()
    if cleaned == '':
        return 'anonymous'
    return cleaned.title()

total = 0
for n in range(4):
    total += n * n
print(total)
