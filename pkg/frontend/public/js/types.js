/** Shapes exchanged with the recommendation service, mirrored field for field. */
export {};
