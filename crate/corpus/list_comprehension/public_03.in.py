def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''

prices = [3, 7, 12]
taxed = []
for p in prices:
    taxed.append(p * 2)
print(taxed)
