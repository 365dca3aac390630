def first_word(text):
    parts = text.split(' ')
    if parts:
        return parts[0]
    return ''
log = []
for k in range(3):
    log.append(k * 10)
for k in range(3):
    log.append(k * 10)
print(log)
